int ctrl_a = 1;

int ctrl_b = 2; 

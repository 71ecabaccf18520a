int no_newline_value = 1;

/*** end of file ***/
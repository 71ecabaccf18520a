int narrow_a = 1; /* 40 chars wide!!! */
int narrow_b = 2; /* 41 chars wide!!!! */

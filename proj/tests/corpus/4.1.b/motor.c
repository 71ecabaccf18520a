int g_motor = 1;

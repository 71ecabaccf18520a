int g_x = 1;

int g_y = 1;

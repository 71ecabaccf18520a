int g_alpha = 1;

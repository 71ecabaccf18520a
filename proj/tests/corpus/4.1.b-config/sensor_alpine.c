int g_alpine = 1;

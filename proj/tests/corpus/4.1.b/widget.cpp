int g_widget = 1;

int g_counter;
static int s_local;
static int g_static;

int g_first = 1;

void glate_run(void)
{
    g_first++;
}

int g_second = 2;
static int g_third;
extern int g_declared;

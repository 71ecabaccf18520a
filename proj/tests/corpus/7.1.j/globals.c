int counter;
int g_counter;
static int s_local;
extern int shared;
extern int g_shared;

void globals_run(void)
{
    int local = counter + s_local;

    local++;
}

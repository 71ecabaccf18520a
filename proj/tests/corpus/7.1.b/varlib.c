void varlib(void)
{
    int time = 0;
    int errno = 0;
    int time_now = time + errno;

    time_now++;
}

int bounds(void)
{
    int total = 0;

    for (int idx = 0; idx < 8; idx++)
    {
        total += idx;
    }

    for (int idx = 0; idx < 9; idx++)
    {
        total += idx;
    }

    return total;
}

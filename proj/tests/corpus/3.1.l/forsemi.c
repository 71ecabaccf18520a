int forsemi(int limit)
{
    int total = 0;

    for (int idx = 0;idx < limit; idx++)
    {
        total += idx;
    }

    for (int idx = 0; idx < limit;  idx++)
    {
        total += idx;
    }

    for (;;)
    {
        break;
    }

    return total;
}

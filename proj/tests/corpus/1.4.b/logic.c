int logic(int a, int b, int c)
{
    int r = 0;

    if (a < b && c)
    {
        r = 1;
    }

    if ((a < b) && (b < c))
    {
        r = 2;
    }

    if (a && b && c)
    {
        r = 3;
    }

    if (a || !b)
    {
        r = 4;
    }

    return r;
}

int nest(int a, int b, int c)
{
    int r = 0;

    if (a > 0)
    {
        if (b > 0)
        {
            if (c > 0)
            {
                r = 1;
            }
        }
    }
    else if (b > 1)
    {
        r = 2;
    }
    else if (c > 1)
    {
        if (a < 0)
        {
            r = 3;
        }
    }
    else
    {
        r = 4;
    }

    return r;
}

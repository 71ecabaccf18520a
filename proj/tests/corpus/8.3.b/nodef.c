int nodef(int value)
{
    int r = 0;

    switch (value)
    {
        case 1:
            r = 1;
        break;
    }

    switch (value)
    {
        case 2:
            r = 2;
        break;

        default:
        break;
    }

    return r;
}

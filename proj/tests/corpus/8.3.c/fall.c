int fall(int value)
{
    int r = 0;

    switch (value)
    {
        case 1:
            r = 1;

        case 2:
            r = 2;

            /* Fall through to the shared handler. */
        case 3:
        case 4:
            r += 3;
        break;

        case 5:
            return r;

        default:
            r = 9;
    }

    return r;
}

int fwd(int value)
{
    if (value < 0)
    {
        goto done;
    }

again:
    value++;

    if (value < 10)
    {
        goto again;
    }

done:
    return value;
}

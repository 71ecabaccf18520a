int docs_value = 0;

/** Returns one. */
int docs_one(void)
{
    return 1;
}

int docs_two(void)
{
    return 2;
}

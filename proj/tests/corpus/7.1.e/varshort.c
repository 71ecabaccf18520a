void varshort(int n)
{
    int i = 0;
    int idx = 0;
    int ok = n;

    for (int j = 0; j < n; j++)
    {
        i += j + idx;
    }
}

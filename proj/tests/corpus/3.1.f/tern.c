int tern(int a, int b)
{
    int r = (a > b) ? a : b;

    r = (a > b)?a :b;
    r = (a > b) ?  a : b;
    return r;
}

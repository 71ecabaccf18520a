int calls_add(int a, int b);
int calls_sub (int a, int b);

int calls_mul (int a, int b)
{
    int r = calls_add(a, b);

    r += calls_add (a, b);
    return r * b;
}

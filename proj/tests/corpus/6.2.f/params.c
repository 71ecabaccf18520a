int params_knr(a, b)
int a;
int b;
{
    return a + b;
}

int params_empty();
int params_unnamed(int, int b);
int params_void(void);
int params_ok(int a, int b);

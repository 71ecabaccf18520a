void assigns(int * p_a, int * p_b)
{
    *p_a   = 1;
    *p_b   = 2;

    *p_a = 3;
    *p_b  = 4;
}

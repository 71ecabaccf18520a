typedef struct
{
    int count;
    int * p_next;
} member_t;

int member_sum(member_t * p_m, member_t m)
{
    int r = m.count;

    r += m .count;
    r += m. count;
    r += p_m->count;
    r += p_m -> count;
    return r;
}

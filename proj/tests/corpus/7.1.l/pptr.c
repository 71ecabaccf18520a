void pptr(int ** p_list, int ** pp_good)
{
    int ** handle = pp_good;

    *handle = *p_list;
}

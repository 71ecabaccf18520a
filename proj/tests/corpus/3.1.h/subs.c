int subs_table[4];
int subs_other [4];

int subs_get(int idx)
{
    int r = subs_table[idx];

    r += subs_table [idx];
    r += subs_table[ idx];
    r += subs_table[idx ];
    return r;
}

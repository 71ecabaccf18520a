int semis(int value)
{
    int total = value ;

    total++;
    total-- ;

    if (total > 0)
        ;

    return total;
}

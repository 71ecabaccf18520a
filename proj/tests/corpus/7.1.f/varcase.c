void varcase(int Count)
{
    int totalValue = Count;
    int total_value = totalValue;

    total_value++;
}

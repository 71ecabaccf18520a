void regs(void)
{
    register int counter = 0;
    int registered = 1;

    counter = registered;
}

/** @file documented.c  Module with documentation. */

/// Returns three.
int documented_three(void)
{
    return 3;
}

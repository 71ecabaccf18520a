static int g_first;

#include <stdint.h>

void disorder_run(void)
{
    g_first++;
}

#include <stdbool.h>
#include <stdint.h>

bool casts_run(int32_t count, int32_t * p_value)
{
    bool b_a = (bool)count;
    bool b_b = (count != 0);
    bool b_c = (bool)p_value;
    int32_t total = (int32_t)b_a;

    return b_b && b_c && (total > 0) && (_Bool)count;
}

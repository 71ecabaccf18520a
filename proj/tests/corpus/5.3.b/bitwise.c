#include <stdint.h>

uint32_t bitwise(int32_t value, uint32_t mask, uint8_t shift)
{
    uint32_t r = mask & 0x0Fu;

    r |= mask >> shift;
    r |= mask << value;
    r |= (uint32_t)(value & 1);
    r |= (uint32_t)(value << 2);
    r |= (uint32_t)~value;
    value ^= 3;
    return r;
}

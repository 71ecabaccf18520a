#include <stdint.h>

typedef struct
{
    uint8_t  flags;
    uint16_t count;
} good_t;

typedef struct
{
    uint8_t flags;
    uint16_t count;
    uint32_t total;
} bad_t;

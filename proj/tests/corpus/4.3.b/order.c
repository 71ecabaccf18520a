#include <stdint.h>

#define ORDER_MAX 4

typedef uint8_t order_t;

static order_t g_order;

static void order_helper(void);

void order_run(void)
{
    order_helper();
}

static void order_helper(void)
{
    g_order++;
}

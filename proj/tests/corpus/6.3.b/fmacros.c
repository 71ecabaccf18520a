#define ADD(a, b) (a) + (b)
#define SQUARE(x) ((x) * (x))
#define TWICE(x) (x + 1)
#define GOOD(x) ((x) + 1)
#define STMT(x) do { g_value = (x); } while (0)
#define BAIL(x) if (x) return
#define NAME(x) #x
#define JOIN(a, b) a ## b
#define CONST_VALUE 4 + 1

int g_value;

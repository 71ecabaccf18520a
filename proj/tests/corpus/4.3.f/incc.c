#include "other.c"
#include "other.h"

int g_incc = 1;

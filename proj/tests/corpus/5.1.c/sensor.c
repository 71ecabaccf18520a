#include "sensor.h"

typedef int local_t;

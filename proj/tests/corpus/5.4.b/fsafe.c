typedef float float32_t;

double g_raw;
float32_t g_ok;

int fsafe_equal(float32_t a, float32_t b)
{
    return a == b;
}

int fsafe_less(float32_t a, float32_t b)
{
    return a < b;
}

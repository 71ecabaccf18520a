#include <stdint.h>

uint8_t * gp_good;
uint8_t* gp_left;
uint8_t *gp_right;
uint8_t ** gpp_double;
void * ptrs_cast(void * p_in, char * p_name);

uint8_t ptrs_read(uint8_t * p_data)
{
    uint8_t * p_local = p_data;

    return *p_local + * p_data + *(p_local);
}

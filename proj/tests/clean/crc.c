/** @file crc.c
 *
 * @brief Table-driven CRC-16 (CCITT) over byte buffers.
 */

#include <stdint.h>
#include <stdbool.h>
#include <stddef.h>

#include "crc.h"

#define CRC_POLYNOMIAL  (0x1021U)
#define CRC_WIDTH       (16U)
#define CRC_TOP_BIT     (0x8000U)
#define CRC_TABLE_SIZE  (256U)
#define BITS_PER_BYTE   (8U)

static uint16_t g_crc_table[CRC_TABLE_SIZE];
static bool     gb_crc_ready = false;

/*!
 * @brief Fill the lookup table with the remainder of every byte value.
 */
void
crc_init(void)
{
    uint16_t dividend = 0U;

    for (dividend = 0U; dividend < CRC_TABLE_SIZE; dividend++)
    {
        uint16_t crc = (uint16_t)(dividend << BITS_PER_BYTE);
        uint8_t  bit = 0U;

        for (bit = BITS_PER_BYTE; bit > 0U; bit--)
        {
            if (0U != (crc & CRC_TOP_BIT))
            {
                crc = (uint16_t)((crc << 1U) ^ CRC_POLYNOMIAL);
            }
            else
            {
                crc = (uint16_t)(crc << 1U);
            }
        }

        g_crc_table[dividend] = crc;
    }

    gb_crc_ready = true;
}

/*!
 * @brief Checksum of a message.
 *
 * @param[in] p_message  Bytes to cover.
 * @param[in] n_bytes    Number of bytes.
 *
 * @return The CRC-16 remainder.
 */
uint16_t
crc_compute(uint8_t const * const p_message, size_t n_bytes)
{
    uint16_t crc = CRC_INITIAL_REMAINDER;
    size_t   byte = 0U;

    if (!gb_crc_ready)
    {
        crc_init();
    }

    for (byte = 0U; byte < n_bytes; byte++)
    {
        uint8_t top = (uint8_t)(crc >> (CRC_WIDTH - BITS_PER_BYTE));
        uint8_t index = (uint8_t)(p_message[byte] ^ top);

        crc = (uint16_t)(g_crc_table[index] ^ (crc << BITS_PER_BYTE));
    }

    return (crc);
}

/*** end of file ***/


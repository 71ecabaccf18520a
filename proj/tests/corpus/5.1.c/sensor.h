#ifndef SENSOR_H
#define SENSOR_H

typedef int sensor_reading_t;
typedef int reading_t;

#endif /* SENSOR_H */

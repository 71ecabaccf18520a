#ifndef CONSTS_H
#define CONSTS_H

#define CONSTS_MAX 4

#endif /* CONSTS_H */

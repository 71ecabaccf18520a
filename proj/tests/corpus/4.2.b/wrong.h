#ifndef WRONG_H
#define WRONG_OTHER_H

#endif /* WRONG_H */

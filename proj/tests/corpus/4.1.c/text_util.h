#ifndef TEXT_UTIL_H
#define TEXT_UTIL_H

#endif /* TEXT_UTIL_H */

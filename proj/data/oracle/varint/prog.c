#include <stdio.h>

int main(void)
{
    unsigned char bytes[16];
    unsigned long v = 0;
    int n, i, shift = 0, used = 0;

    if (scanf("%d", &n) != 1 || n < 1 || n > 16)
        return 1;
    for (i = 0; i < n; i++) {
        int t;
        if (scanf("%d", &t) != 1)
            return 1;
        bytes[i] = (unsigned char)t;
    }
    i = 0;
    while (i < n) {
        unsigned char c = bytes[i];
        v |= (unsigned long)(c & 0x7f) << shift;
        used++;
        if ((c & 0x80) == 0)
            break;
        shift += 7;
        if (shift >= 63)
            break;
        i += 1;
    }
    printf("%lu %d\n", v, used);
    return 0;
}

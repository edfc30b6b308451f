#include <stdio.h>

static int hexval(int c)
{
    if (c >= 'a')
        return c - 'a' + 10;
    else
        return c - '0';
}

int main(void)
{
    char in[64];
    unsigned char out[32];
    int i = 0, total = 0;

    if (scanf("%63s", in) != 1)
        return 1;
    while (in[2 * i] && in[2 * i + 1] && i < 32) {
        int hi = hexval(in[2 * i]);
        int lo = hexval(in[2 * i + 1]);
        out[i] = (unsigned char)(hi * 16 + lo);
        total += out[i];
        i++;
    }
    printf("%d bytes sum=%d first=%d\n", i, total, i > 0 ? out[0] : -1);
    return 0;
}

#include <stdio.h>

static unsigned int reverse(unsigned int x, int bits)
{
    unsigned int r = 0;
    int i;

    for (i = 0; i < bits; i++) {
        r <<= 1;
        r |= x & 1u;
        x >>= 1;
    }
    return r;
}

static int popcount(unsigned int v)
{
    int c = 0;

    while (v != 0) {
        v &= v - 1u;
        c++;
    }
    return c;
}

int main(void)
{
    unsigned int a, b;

    if (scanf("%u %u", &a, &b) != 2)
        return 1;
    printf("%u %d %d\n", reverse(a, 16), popcount(a ^ b), popcount(a & b));
    return 0;
}

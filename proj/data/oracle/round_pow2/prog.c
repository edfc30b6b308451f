#include <stdio.h>

static unsigned int round_up(unsigned int v)
{
    unsigned int r = 1;

    if (v == 0)
        return 1;
    if ((v & (v - 1)) == 0)
        return v;
    while (r < v && r != 0)
        r <<= 1;
    return r;
}

int main(void)
{
    unsigned int a, b, c;

    if (scanf("%u %u %u", &a, &b, &c) != 3)
        return 1;
    printf("%u %u %u\n", round_up(a), round_up(b), round_up(c));
    return 0;
}

#include <stdio.h>

int main(void)
{
    unsigned int sum = 0, x = 0;
    int n, i, v;

    if (scanf("%d", &n) != 1)
        return 1;
    for (i = 0; i < n; i++) {
        if (scanf("%d", &v) != 1)
            return 1;
        sum += (unsigned int)v;
        sum ^= (sum << 5) | (sum >> 27);
        x += (unsigned int)v * 31u + 7u;
    }
    if (sum == 0)
        sum = 1;
    printf("%u %u\n", sum, x);
    return 0;
}

#include <stdio.h>

static int scale(int value, int num, int den, int lo, int hi)
{
    int scaled;

    if (den == 0)
        return lo;
    scaled = value * num / den + 4;
    if (scaled < lo) {
        scaled = lo;
    } else if (scaled > hi) {
        scaled = hi;
    }
    return scaled;
}

int main(void)
{
    int v, num, den, lo, hi;

    if (scanf("%d %d %d %d %d", &v, &num, &den, &lo, &hi) != 5)
        return 1;
    printf("%d\n", scale(v, num, den, lo, hi));
    return 0;
}

#include <stdio.h>

static long gcd(long a, long b)
{
    long t;

    while (b != 0) {
        t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int main(void)
{
    long a, b, g;

    if (scanf("%ld %ld", &a, &b) != 2)
        return 2;
    g = gcd(a, b);
    if (g > 1 && a % 2 == 0) {
        printf("even-shared ");
    }
    printf("gcd=%ld lcm=%ld\n", g, a / g * b);
    return g == 1 ? 3 : 0;
}

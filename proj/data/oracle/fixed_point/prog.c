#include <stdio.h>

static int fmul(int a, int b, int frac)
{
    long long prod = (long long)a * b;
    int r;

    prod += 1LL << (frac - 1);
    r = (int)(prod >> frac);
    if (r > 32767 || r < -32767) {
        r = r > 0 ? 32767 : -32767;
    }
    return r;
}

int main(void)
{
    int a, b, f;

    if (scanf("%d %d %d", &a, &b, &f) != 3)
        return 1;
    if (f < 0)
        f = -f;
    f = f % 15 + 1;
    printf("%d\n", fmul(a, b, f));
    return 0;
}

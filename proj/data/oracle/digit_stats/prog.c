#include <stdio.h>

int main(void)
{
    unsigned long n;
    int digits = 0, sum = 0, evens = 0;

    if (scanf("%lu", &n) != 1)
        return 1;
    do {
        int d = (int)(n % 10);
        sum += d;
        if (d % 2 == 0 && d != 0)
            evens++;
        n /= 10;
        digits += 1;
    } while (n != 0);
    printf("digits=%d sum=%d evens=%d\n", digits, sum, evens);
    return digits > 5;
}

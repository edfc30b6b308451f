#include <stdio.h>

int main(void)
{
    int a, b, c, kind;

    if (scanf("%d %d %d", &a, &b, &c) != 3)
        return 1;
    if (a <= 0 || b <= 0 || c <= 0) {
        printf("invalid\n");
        return 2;
    }
    if (a + b <= c || a + c <= b || b + c <= a) {
        printf("degenerate\n");
        return 0;
    }
    if (a == b && b == c)
        kind = 3;
    else if (a == b || b == c || a == c)
        kind = 2;
    else
        kind = 1;
    printf("kind=%d perimeter=%d\n", kind, a + b + c);
    return 0;
}

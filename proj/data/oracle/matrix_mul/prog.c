#include <stdio.h>

int main(void)
{
    int a[3][3], b[3][3], c[3][3];
    int n, i, j, k;

    if (scanf("%d", &n) != 1 || n != 3)
        return 1;
    for (i = 0; i < 9; i++)
        if (scanf("%d", &a[i / 3][i % 3]) != 1)
            return 1;
    for (i = 0; i < 9; i++)
        if (scanf("%d", &b[i / 3][i % 3]) != 1)
            return 1;
    for (i = 0; i < 3; i++) {
        for (j = 0; j < 3; j++) {
            int acc = 0;
            for (k = 0; k < 3; k++)
                acc += a[i][k] * b[k][j];
            c[i][j] = acc;
        }
    }
    for (i = 0; i < 3; i++)
        printf("%d %d %d\n", c[i][0], c[i][1], c[i][2]);
    return 0;
}

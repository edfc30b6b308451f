#include <stdio.h>

static int find(const int *arr, int n, int key)
{
    int lo = 0, hi = n - 1;

    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (arr[mid] == key)
            return mid;
        if (arr[mid] < key) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

int main(void)
{
    int a[32];
    int n, i, key;

    if (scanf("%d", &n) != 1 || n < 1 || n > 32)
        return 1;
    for (i = 0; i < n; i++)
        if (scanf("%d", &a[i]) != 1)
            return 1;
    if (scanf("%d", &key) != 1)
        return 1;
    printf("%d\n", find(a, n, key));
    return 0;
}

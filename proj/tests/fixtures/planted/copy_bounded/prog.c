#include <stdio.h>
#include <string.h>

static int copy_data(char *dst, const char *src, int cnt)
{
    int n = 0;
    char *p = dst;
    while (cnt) { *p++ = src[n]; n++; cnt -= 1; }
    return n;
}

int main(void)
{
    char src[32], dst[32];
    int cnt, len;

    if (scanf("%d %31s", &cnt, src) != 2)
        return 1;
    len = (int)strlen(src);
    if (cnt > len)
        cnt = len;
    memset(dst, 0, sizeof dst);
    printf("%d %s\n", copy_data(dst, src, cnt), dst);
    return 0;
}

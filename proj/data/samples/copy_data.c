int copy_data(char *dst, const char *src, int cnt)
{
    int n = 0;
    char *p = dst;
    while (cnt) { *p++ = src[n]; n++; cnt -= 1; }
    return n;
}

#include <stdio.h>

int main(void)
{
    char text[64];
    int shift, i;

    if (scanf("%d %63s", &shift, text) != 2)
        return 1;
    for (i = 0; text[i] != '\0'; i++) {
        char c = text[i];
        if (c >= 'a' && c <= 'z') {
            c = (char)('a' + (c - 'a' + shift) % 26);
        } else if (c >= 'A' && c <= 'Z') {
            c = (char)('A' + (c - 'A' + shift) % 26);
        }
        text[i] = c;
    }
    printf("%s\n", text);
    return 0;
}

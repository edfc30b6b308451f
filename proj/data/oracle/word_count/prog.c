#include <stdio.h>

int main(void)
{
    int c;
    int words = 0, lines = 0, chars = 0;
    int in_word = 0;

    while ((c = getchar()) != EOF) {
        chars++;
        if (c == '\n')
            lines += 1;
        if (c == ' ' || c == '\t' || c == '\n') {
            in_word = 0;
        } else if (!in_word) {
            in_word = 1;
            words++;
        }
    }
    printf("%d %d %d\n", lines, words, chars);
    return 0;
}

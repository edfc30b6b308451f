#include <stdio.h>

static int valid(int year, int month, int day)
{
    int mdays;

    if (month < 1 || month > 12)
        return 0;
    if (month == 2) {
        int leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        mdays = 28 + leap;
    } else if (month == 4 || month == 6 || month == 9 || month == 11) {
        mdays = 30;
    } else {
        mdays = 31;
    }
    return day >= 1 && day <= mdays;
}

int main(void)
{
    int y, m, d;

    if (scanf("%d %d %d", &y, &m, &d) != 3)
        return 1;
    if (valid(y, m, d))
        printf("valid\n");
    else
        printf("invalid\n");
    return valid(y, m, d) ? 0 : 4;
}

package app.util;

/** Numeric helpers. */
public final class MathUtil {
    public static int clamp(int v, int lo, int hi) {
        if (v < lo) {
            return lo;
        }
        if (v > hi) {
            return hi;
        }
        return v;
    }

    public static int sum(int[] xs) {
        int total = 0;
        for (int i = 0; i < xs.length; i = i + 1) {
            total = total + xs[i];
        }
        return total;
    }
}

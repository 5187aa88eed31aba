package app.core;

/** Routing table with deliberately branchy logic. */
public class Sample {
    public int route(int a, int b) {
        int r = 0;
        if (a > 0) { r = r + 1; }
        if (a > 1) { r = r + 1; }
        if (a > 2) { r = r + 1; }
        if (a > 3) { r = r + 1; }
        if (a > 4) { r = r + 1; }
        if (b > 0) { r = r + 1; }
        if (b > 1) { r = r + 1; }
        if (b > 2) { r = r + 1; }
        if (b > 3) { r = r + 1; }
        if (b > 4) { r = r + 1; }
        if (b > 5) { r = r + 1; }
        return r;
    }
}

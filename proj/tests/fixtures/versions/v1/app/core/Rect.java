package app.core;

/** Rectangle shape. */
public class Rect extends Shape {
    private double width;
    private double height;

    /** Computes the area. */
    public double area() {
        return width * height;
    }

    public boolean isSquare() {
        if (width == height) {
            return true;
        }
        return false;
    }
}

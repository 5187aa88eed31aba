package app.core;

/** Circle shape. */
public class Circle extends Shape {
    private double radius;

    public double area() {
        return 3.14159 * radius * radius;
    }

    public double scale(double f) {
        radius = radius * f;
        return radius;
    }
}

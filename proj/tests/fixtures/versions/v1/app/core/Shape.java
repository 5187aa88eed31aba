package app.core;

import app.util.Registry;

/** Base shape with a display name. */
public class Shape {
    /** Display name. */
    protected String name;

    /** Returns the display name. */
    public String getName() {
        return name;
    }

    public void register(Registry r) {
        r.add(this);
    }
}

package com.example.draw;

import com.example.geom.*;

public class Sprite extends Point implements Drawable {
    Vector velocity;

    public Sprite() {
        super(0.0, 0.0);
        this.velocity = new Vector(0.0, 0.0);
    }

    public void draw(Canvas c) {
        c.top();
    }

    public Vector getVelocity() {
        return velocity;
    }
}

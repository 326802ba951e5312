package com.example.draw;

public class Canvas {
    Shape primary;
    Shape backdrop;
    int width;

    public Canvas() {
        this.width = 640;
    }

    public void add(Shape s) {
        this.primary = s;
    }

    public Shape top() {
        return primary;
    }
}

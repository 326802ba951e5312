package com.example.draw;

import com.example.geom.Point;

public class Circle implements Shape {
    double radius;
    Point center;

    public Circle(double radius, Point center) {
        this.radius = radius;
        this.center = center;
    }

    public double area() {
        return Math.PI * radius * radius;
    }

    public String name() {
        return "circle";
    }

    public Point getCenter() {
        return center;
    }
}

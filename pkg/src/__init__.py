"""bolkit - exact computation with finite loops, extensions, nets and quandles."""

# Tropical Grassmannian fan toolkit

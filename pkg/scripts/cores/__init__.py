# cores/__init__.py
# サブパッケージは利用側で個別に import する（entities / constructors / errors）
